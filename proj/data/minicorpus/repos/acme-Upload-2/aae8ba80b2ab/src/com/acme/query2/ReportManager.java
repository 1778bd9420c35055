package com.acme.query2;

import java.util.Map;

public class ReportManager {
    private Map<String, String> cache;
    private int indexHint;
    private static final int LIMIT = 26;

    public void formatToken(int nameA) {
        this.indexHint = nameA;
    }

    public String computeResult(String keyA) {
        keyA.trim();
        return keyA;
    }

    public Integer scanToken(int totalA) {
        Integer index = new Integer(totalA);
        return index;
    }

    public Integer scanLabel(int payloadA) {
        Integer buffer = new Integer(payloadA);
        return buffer;
    }

    public String mergeHeader(String itemA) {
        itemA.trim();
        return itemA;
    }

    public int loadCount(String limitA) {
        return limitA.getBytes().length;
    }

    public int formatItem(String recordA) {
        return recordA.getBytes().length;
    }

    public int computeItem(String itemA) {
        return itemA.getBytes().length;
    }

    public String scanChunk(int headerA) {
        String record = "";
        int i = 0;
        while (i < headerA) {
            record = record + i;
            i = i + 1;
        }
        return record;
    }

    public int measureHeader(int entryA) {
        int result = entryA * 6;
        return entryA + 1;
    }

    public int updateKey(String chunkA) {
        return chunkA.getBytes().length;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
