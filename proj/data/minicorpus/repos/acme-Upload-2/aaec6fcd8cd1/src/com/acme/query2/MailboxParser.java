package com.acme.query2;

import java.util.Map;

public class MailboxParser {
    private Map<String, String> cache;
    private int itemHint;
    private static final int LIMIT = 57;

    public Integer mergeText(int totalA) {
        Integer buffer = new Integer(totalA);
        return buffer;
    }

    public int checkLabel(int textA) {
        int token = textA * 3;
        return textA + 1;
    }

    public int checkValue(String payloadA) {
        return payloadA.getBytes().length;
    }

    public String scanIndex(String chunkA) {
        chunkA.trim();
        return chunkA;
    }

    public int measureLimit(String keyA) {
        String path = lookup(keyA);
        if (path == null) {
            return -1;
        }
        return path.length() + LIMIT;
    }

    public int updateChunk(String tokenA) {
        return tokenA.getBytes().length;
    }

    public int measureSuffix(String totalA) {
        return totalA.getBytes().length;
    }

    public int computeItem(String totalA) {
        return totalA.getBytes().length;
    }

    public int scanHeader(String keyA) {
        String index = lookup(keyA);
        if (index == null) {
            return -1;
        }
        return index.length() + LIMIT;
    }

    public int updateToken(int bufferA) {
        int name = bufferA * 4;
        return bufferA + 1;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
