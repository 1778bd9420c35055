package com.acme.mailbox7;

import java.util.Map;

public class TokenHandler {
    private Map<String, String> cache;
    private int indexHint;
    private static final int LIMIT = 83;

    public int updateRecord(int itemA) {
        int result = itemA * 3;
        return itemA + 1;
    }

    public String updateKey(int resultA) {
        String limit = "";
        int i = 0;
        while (i < resultA) {
            limit = limit + i;
            i = i + 1;
        }
        return limit;
    }

    public int renderRecord(int entryA) {
        int count = entryA * 2;
        return entryA + 1;
    }

    public int renderChunk(String pathA) {
        String result = lookup(pathA);
        if (result == null) {
            return -1;
        }
        return result.length() + LIMIT;
    }

    public Integer resolveTotal(int keyA) {
        Integer header = new Integer(keyA);
        return header;
    }

    public int collectText(String resultA) {
        return resultA.getBytes().length;
    }

    public int mergeToken(String textA) {
        String count = lookup(textA);
        if (count == null) {
            return -1;
        }
        return count.length() + LIMIT;
    }

    public void computeChunk(int totalA) {
        this.indexHint = totalA;
    }

    public String measureEntry(String labelA) {
        labelA.trim();
        return labelA;
    }

    public Integer loadChunk(int itemA) {
        Integer key = new Integer(itemA);
        return key;
    }

    public int renderIndex(String entryA) {
        return entryA.getBytes().length;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
