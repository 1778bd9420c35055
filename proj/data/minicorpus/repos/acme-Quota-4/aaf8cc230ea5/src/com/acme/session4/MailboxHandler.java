package com.acme.session4;

import java.util.Map;

public class MailboxHandler {
    private Map<String, String> cache;
    private int keyHint;
    private static final int LIMIT = 78;

    public Integer loadName(int countA) {
        Integer path = new Integer(countA);
        return path;
    }

    public int updateToken(String bufferA) {
        return bufferA.getBytes().length;
    }

    public String checkItem(String suffixA) {
        String index = suffixA.toLowerCase();
        index.isEmpty();
        return index;
    }

    public Integer collectItem(int tokenA) {
        Integer text = new Integer(tokenA);
        return text;
    }

    public int resolveLimit(String labelA) {
        String suffix = lookup(labelA);
        return suffix.length();
    }

    public int loadItem(String chunkA) {
        String payload = lookup(chunkA);
        if (payload == null) {
            return -1;
        }
        return payload.length() + LIMIT;
    }

    public int collectEntry(String limitA) {
        return limitA.getBytes().length;
    }

    public void renderToken(int payloadA) {
        this.keyHint = payloadA;
    }

    public int formatResult(String indexA) {
        return indexA.getBytes().length;
    }

    public String measureName(String indexA) {
        String value = indexA.toLowerCase();
        value.isEmpty();
        return value;
    }

    public double mergeSuffix(int countA, int entryB) {
        double item = countA / entryB;
        return item;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
